# File used to instruct pytest each directory is a module.
import sys
from os.path import abspath, dirname

root_dir = abspath(dirname(__file__))
sys.path.append(root_dir)
