"""
Pytest configuration file for fsweval tests.
This file contains shared fixtures and setup code for all tests.
"""
# Import fixtures from test_utils so pytest can discover them
from test_utils import metric_params, corpus_config, rng
