#!/usr/bin/env python
from setuptools import setup

setup(
    setup_requires=['pbr>=4.2'],
    pbr=True,
)
