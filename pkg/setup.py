from setuptools import setup, find_packages
from pathlib import Path

# Read requirements
def read_requirements(filename: str) -> list:
    try:
        return [
            line.strip()
            for line in Path(filename).read_text().splitlines()
            if line.strip() and not line.startswith(('#', '-'))
        ]
    except FileNotFoundError:
        return []

# Read long description
try:
    long_description = Path('README.md').read_text()
except FileNotFoundError:
    long_description = "Minimum joins, distances and cathedral decompositions of grafts"

setup(
    name="cathedral-grafts",
    version="0.1.0",
    description="Minimum T-joins, Sebő distances and the cathedral decomposition of bipartite grafts",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    python_requires=">=3.10",
    install_requires=read_requirements('requirements.txt'),
    extras_require={
        "dev": read_requirements('requirements-dev.txt'),
    },
    entry_points={
        'console_scripts': [
            'cathedral=cathedral.cli:main',
        ],
    },
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
