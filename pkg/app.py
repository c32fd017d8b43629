# app.py
import sys

from struve_bounds.cli import run

if __name__ == "__main__":
    sys.exit(run())
