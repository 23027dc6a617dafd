import os
import sys

# make the oracles module importable from any invocation directory
sys.path.insert(0, os.path.dirname(__file__))
