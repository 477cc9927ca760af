"""
Run the test suite, eg python -m pygpa.tests --no-integration
"""
import os
import sys

import pytest


if __name__ == '__main__':
    sys.exit(pytest.main([os.path.dirname(__file__)] + sys.argv[1:]))
