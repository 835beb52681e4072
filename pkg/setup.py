# setup.py


from codecs import open
from os import path
from setuptools import setup, find_packages
import sys


here = path.abspath(path.dirname(__file__))

# load configures
exec(open("./qformal/app.py").read())

# Get the long description from the relevant file
with open(path.join(here, "README.rst"), encoding='utf-8') as f:
    long_description = f.read()

# check Python version.
if sys.version_info[0] != 3 or sys.version_info[1] < 11:
    sys.exit("Sorry, only Python 3.11 or above is supported.")

reqs = ["numpy", "pandas", "scipy", "statsmodels"]

setup(
    name = "qformal",

    # Versions should comply with PEP440.
    version = VERSION,

    description = "qformal - numerical workbench for the mathematical formalism of quantum mechanics",
    long_description = long_description,
    long_description_content_type = "text/x-rst",

    author = AUTHOR,

    license='Apache-2.0',

    keywords=['quantum mechanics', 'operator algebra', 'quantum logic',
              'entropy', 'Bell inequality', 'Kochen-Specker', 'decoherence'],

    packages = find_packages(),

    # KS context sets shipped as data files.
    package_data = {"qformal": ["bell/data/*.json"]},
    include_package_data = True,

    entry_points={
        'console_scripts': [
            'qformal = qformal.main:main'
        ],
    },

    python_requires = ">=3.11",

    install_requires = reqs,

    extras_require = {
        "tests": ["pytest"]
    }

    # buid the distribution: python setup.py sdist
)
