# Settings, logging, errors and the worker pool
