import setuptools


with open("README.md", "r") as fh:
    long_description = fh.read()


setuptools.setup(
    name="gmolib",
    version="0.1.0",
    author="X",
    description="Numerical verification of log-cosine integral identities",
    long_description=long_description,
    long_description_content_type="text/markdown",
    install_requires=['numpy', 'scipy', 'numba', 'joblib', 'tqdm'],
    extras_require={'test': ['pytest']},
    packages=setuptools.find_packages(exclude=['tests']),
    include_package_data=True,
    entry_points={
        'console_scripts': ['gmolib=gmolib.cli.main:main'],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ]
)
