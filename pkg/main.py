"""
Entry point for the command-line tool
"""
from qgain.cli import main

if __name__ == '__main__':
    main()
