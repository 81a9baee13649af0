import os

from setuptools import find_packages, setup


def get_version():
    with open(os.path.join(os.path.dirname(__file__), "VERSION")) as f:
        return f.read().strip()

with open("requirements.txt") as f:
    install_requires = f.read().splitlines()

setup(
    name="fsweval",
    description="Similarity metrics and corpus experiments for Formal SignWriting",
    version=get_version(),
    packages=find_packages(exclude=("benchmarks", "examples", "tests")),
    package_data={
        "fsweval": ["fsw/data/*.json"],
    },
    include_package_data=True,
    install_requires=install_requires,
    extras_require={
        "bench": ["tqdm>=4.66"],
    },
    python_requires=">=3.9",
    entry_points={
        "console_scripts": [
            "fsweval = fsweval.cli:main",
        ],
    },
)
