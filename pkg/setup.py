"""Build hook for the optional compiled pivot kernel.

Metadata lives in pyproject.toml.  If Cython or a C compiler is missing the
package still installs and uses the pure-Python kernel.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("HCONE_PURE_PYTHON"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("hcone._kernels.pivot_ext", ["src/hcone/_kernels/pivot_ext.pyx"], extra_compile_args=["-O2"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
