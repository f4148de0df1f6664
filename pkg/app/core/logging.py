"""
Logging configuration for the graph discord toolkit
"""

import logging
import logging.handlers
import os
import sys

from app.core.config import settings


def setup_logging(level: str = None):
    """Setup application logging.
    
    Reports go to stdout, so the console handler writes to stderr.
    """
    
    # Configure logging format
    log_format = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )
    
    # Configure root logger
    root_logger = logging.getLogger()
    root_logger.setLevel(getattr(logging, (level or settings.LOG_LEVEL).upper()))
    
    # Clear existing handlers
    root_logger.handlers.clear()
    
    # Console handler
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(log_format)
    root_logger.addHandler(console_handler)
    
    # File handler with rotation (optional)
    if settings.LOG_TO_FILE:
        try:
            log_dir = os.path.dirname(settings.LOG_FILE)
            if log_dir:
                os.makedirs(log_dir, exist_ok=True)
            
            file_handler = logging.handlers.RotatingFileHandler(
                settings.LOG_FILE,
                maxBytes=10 * 1024 * 1024,  # 10MB
                backupCount=5
            )
            file_handler.setFormatter(log_format)
            root_logger.addHandler(file_handler)
        except (PermissionError, OSError) as e:
            root_logger.warning(f"Could not create log file {settings.LOG_FILE}: {e}; console logging only")
    
    # Quiet third-party loggers
    logging.getLogger("networkx").setLevel(logging.WARNING)
    logging.getLogger("hypothesis").setLevel(logging.WARNING)
    
    logger = logging.getLogger(__name__)
    logger.debug("Logging configured successfully")
