#!/usr/bin/env python3
# encoding: utf-8
from importlib import util as import_util
from setuptools import setup, find_packages

spec = import_util.spec_from_file_location('_metadata', 'qcp/_metadata.py')
_metadata = import_util.module_from_spec(spec)
spec.loader.exec_module(_metadata)

with open('README.md', 'r', encoding='utf8') as f:
    long_description = f.read()

extras = {
    'test': [
        'pytest'
    ]
}

setup(
    name="QCPs",
    version=_metadata.__version__,
    description="Quantum processes over single-time cylinder sets: simulation, overlap functionals, trees and Born-rule checks.",
    keywords='quantum process wave packet split-operator povm branching monte carlo',
    long_description=long_description,
    long_description_content_type='text/markdown',
    license="Apache License, Version 2.0",
    packages=find_packages(exclude=['test', 'test.*']),
    package_data={'qcp.scenarios': ['config.yaml']},
    python_requires='>=3.8',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Physics',
        'License :: OSI Approved :: Apache Software License',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        "Operating System :: OS Independent",
    ],
    install_requires=[
        'docopt',
        'numpy',
        'pyyaml',
        'scipy>=1.8',
        'tqdm'
    ],
    extras_require=extras,
)
