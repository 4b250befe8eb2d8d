import json

from pathlib import Path
from setuptools import setup, find_packages

with open(Path(__file__).parent.joinpath('spexlab/version.json')) as f:
    version = json.load(f)

version_str = '.'.join(map(str, [version['major'], version['minor'], version['micro']]))
if version['pre_release'] != '':
    version_str += '.' + version['pre_release']


setup(name='spexlab',
      version=version_str,
      license='MIT License',
      description='Spectral extremal graph theory: exact searches, quotient polynomials and '
                  'reproducible verification in Python.',
      long_description=Path('README.md').read_text(encoding='utf-8'),
      long_description_content_type='text/markdown',
      keywords=['spectral graph theory', 'extremal graph theory', 'spectral radius'],
      classifiers=[
            'Development Status :: 4 - Beta',
            'License :: OSI Approved :: MIT License',
            'Operating System :: OS Independent',
            'Programming Language :: Python :: 3',
            'Programming Language :: Python :: 3.8',
            'Programming Language :: Python :: 3.9',
            'Programming Language :: Python :: 3.10',
            'Programming Language :: Python :: 3.11',
            'Topic :: Scientific/Engineering :: Mathematics',
      ],
      packages=find_packages(exclude=['tests', 'tests.*']),
      include_package_data=True,
      package_data={'spexlab': ['version.json']},
      python_requires='>=3.8',
      install_requires=[
            'scipy',
            'numpy>=1.20.0',
            'scikit-learn>=0.24.1',
            'networkx>=2.6',
            'tqdm'
      ],
      entry_points={
            'console_scripts': ['spexlab=spexlab.cli:main']
      })
