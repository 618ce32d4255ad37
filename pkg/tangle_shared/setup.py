from setuptools import find_packages, setup

# metadata
VERSION = (0, 1, 0)
__version__ = '.'.join(map(str, VERSION))

setup_requirements = []


def get_requirements() -> list[str]:
    with open('requirements_shared.txt') as f_in:
        return f_in.read().splitlines()


setup(
    name='tangle_shared',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Natural Language :: English',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'Topic :: Scientific/Engineering :: Physics',
    ],
    description='Polynomial entanglement invariants of three and four qubit pure states',
    install_requires=get_requirements(),
    include_package_data=True,
    keywords='four-tangle three-tangle polynomial-invariants',
    packages=find_packages(),
    setup_requires=setup_requirements,
    version=__version__,
    zip_safe=False,
)
