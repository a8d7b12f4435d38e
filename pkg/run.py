#!/usr/bin/env python
"""Convenience script to run the fuzzypettis command-line tool."""

import sys

from src.fuzzypettis.main import main

if __name__ == "__main__":
    sys.exit(main())
