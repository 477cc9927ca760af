import setuptools

with open("README.md", "r") as fh:
    long_description = fh.read()

# these lines allow 1 file to control the version, so only 1 file needs to be updated per version change
fid = open('pygpa/version.py')
vers = fid.readlines()[-1].split()[-1].strip("\"'")
fid.close()

setuptools.setup(
    name="pygpa",
    version=vers,
    author="pygpa developers",
    description="Primeness and semiprimeness of finite groupoid, inverse semigroup and Leavitt path algebras.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    include_package_data=False,
    packages=setuptools.find_packages(),  # automatically find required packages
    license='MIT',
    python_requires='>=3.8',  # Version of python required
    install_requires=[
        'numpy',
        'scipy',
        'networkx',
        'sympy',
    ],
    extras_require={
        'test': ['pytest', 'hypothesis'],
    },
    entry_points={
        'console_scripts': ['gpa=pygpa.cli:main'],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3.8"
    ],
)
