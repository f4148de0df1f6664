#!/usr/bin/env python3
"""
Graph Discord Toolkit - Main Application Entry Point
"""

from app.cli.commands import cli


def main():
    """Main application entry point"""
    cli()


if __name__ == "__main__":
    main()
