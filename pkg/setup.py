from setuptools import setup

setup(
    name="credal-decide",  # for GitHub dependency graph
)
