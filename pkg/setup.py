import setuptools

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setuptools.setup(
    name="fxpoly",
    version="0.1.0",
    description="Fixed point piecewise polynomial approximations of non-linear functions for secure computation",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests", "tests.*"]),
    package_data={
        "fxpoly.codegen": ["templates/*.tpl", "nfd/*.json"],
        "fxpoly.perfmodel": ["ppd/*.json"],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "Operating System :: POSIX :: Linux",
        "Development Status :: 3 - Alpha",
    ],
    python_requires='>=3.9',
    install_requires=[
        'numpy',
        'tabulate',
        'graphviz',
    ],
    extras_require={
        'tests': ['hypothesis'],
    },
    entry_points={
        'console_scripts': ['fxpoly = fxpoly.cli:main'],
    },
)
