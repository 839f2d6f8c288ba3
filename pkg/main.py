#!/usr/bin/env python3
"""
Squigonometry - Entry Point

Command-line front end for generalized p-trigonometry.
The actual implementation is in the squigonometry package.
"""

if __name__ == "__main__":
    import sys
    from squigonometry import main
    sys.exit(main())
