#!/usr/bin/env python3
"""
Punto de entrada de lglab: `python lglab.py <comando> ...`.
"""
import sys

from src.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
