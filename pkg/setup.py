#!/usr/bin/env python
"""klrspecht setup script."""
from setuptools import setup, find_packages


with open("README.md") as readme:
    long_description = readme.read()

setup(
    name="klrspecht",
    description="Graded Specht modules and decomposition numbers for cyclotomic KLR algebras",
    long_description=long_description,
    long_description_content_type="text/markdown",
    author="klrspecht developers",
    packages=find_packages(),
    scripts=["scripts/klrspecht-run.py"],
    license="BSD 2-Clause",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: BSD License",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.6",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    platforms=["OS Independent"],
    keywords="klr hecke specht representation-theory",
    zip_safe=False,
    python_requires=">=3.6",
    setup_requires=["katversion"],
    use_katversion=True,
    install_requires=["numpy", "pyyaml", "six", "sympy>=1.9"],
    extras_require={"test": ["coverage", "mock", "nose"]},
)
