from setuptools import setup, find_packages
from spoc import __version__

with open('README.md', 'r') as f:
    long_description = f.read()

with open('requirements.txt', 'r') as f:
    requirements = [line for line in f.read().split('\n') if line]

if __name__ == '__main__':
    setup(
        name='spoc',
        version=__version__,
        description='Spectrum occupancy measurement analysis and primary ' +
                'user status classification for cognitive radio.',
        long_description=long_description,
        long_description_content_type='text/markdown',
        packages=find_packages(exclude=['tests', 'tests.*']),
        install_requires=requirements,
        package_data={'spoc': ['examples/*.json']},
        include_package_data=True,
        entry_points={'console_scripts': ['spoc = spoc.__main__:main']},
        classifiers=[
          'Programming Language :: Python',
          'Development Status :: 4 - Beta',
          'Intended Audience :: Science/Research',
          'Topic :: Scientific/Engineering',
          'Environment :: Console',
          'Operating System :: OS Independent'
        ],
        keywords=['cognitive radio',
            'spectrum occupancy',
            'energy detection',
            'machine learning'],
)
