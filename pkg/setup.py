from setuptools import setup, find_packages

setup(
    name='extremal_scale_free',
    version='1.0',
    packages=find_packages(exclude=['tests', 'tests.*']),
    install_requires=[
        'numpy',
        'scipy',
        'pandas>=1.5',
        'tqdm',
    ],
    extras_require={
        'test': ['hypothesis', 'networkx'],
    },
    entry_points={
        'console_scripts': ['extremal=cli.main:main'],
    },
    description='Construction and verification of the extremal scale-free graph family G*_t.'
)
