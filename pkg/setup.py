from setuptools import find_packages, setup

setup(
    name="hardysim",
    version="0.1.0",
    author="Hardysim Team",
    description=("Simulator of a Hardy-type nonlocality argument built on "
                 "two overlapping Mach-Zehnder interferometers."),
    long_description=open("README.md").read(),
    keywords=("quantum nonlocality Hardy local realism interferometer "
              "simulation"),
    packages=find_packages(exclude=["tests", "examples", "examples.*"]),
    scripts=["hardysim.py"],
    license="Apache 2.0",
    install_requires=[
        "absl-py",
        "numpy",
        "pytest",
        "scipy",
    ],
)
