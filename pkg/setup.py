from setuptools import setup, find_packages
import os
import re

here = os.path.abspath(os.path.dirname(__file__))
try:
    # obtain version string from __init__.py
    with open(os.path.join(here, 'mobiusflow', '__init__.py'), 'r') as f:
        init_py = f.read()
    version = re.search('__version__ = "(.*)"', init_py).groups()[0]
except Exception:
    version = ''

setup(
    name='mobiusflow',
    version=version,
    packages=find_packages(exclude=['test', 'test.*']),
    license='MIT',
    author='pdoren',
    description='Kinetic energy metric and geodesics of Möbius actions of split unitary groups.',
    keywords="lie groups, quaternions, riemannian geometry, geodesics, haar measure",
    include_package_data=True,
    package_data={'mobiusflow.utils': ['languages/*.txt']},
    zip_safe=False,
    python_requires='>=3.8',
    install_requires=['numpy', 'scipy', 'pandas', 'pydantic>=2'],
    extras_require={
        'testing': [
            'pytest',
            'pytest-cov',
            'hypothesis',
        ],
    },
    entry_points={
        'console_scripts': ['mobiusflow=mobiusflow.experiments.cli:main'],
    },
)
