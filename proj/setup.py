# Builds the _core pybind11 module by driving the repository's CMake build,
# then copies the resulting shared object into the wheel layout. Metadata
# lives in pyproject.toml.

import pathlib
import shutil
import subprocess
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = pathlib.Path(__file__).resolve().parent
        build_dir = pathlib.Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)
        subprocess.run(
            [
                "cmake",
                str(source_dir),
                f"-DPython3_EXECUTABLE={sys.executable}",
                "-DINDPATH_BUILD_PYTHON=ON",
                "-DINDPATH_BUILD_TESTS=OFF",
                "-DCMAKE_BUILD_TYPE=Release",
            ],
            cwd=build_dir,
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_core"], check=True
        )
        built = sorted(build_dir.glob("python/indpath/_core.*"))
        if not built:
            raise RuntimeError("cmake did not produce the _core module")
        target = pathlib.Path(self.get_ext_fullpath(ext.name)).resolve()
        target.parent.mkdir(parents=True, exist_ok=True)
        shutil.copyfile(built[0], target)


setup(
    ext_modules=[CMakeExtension("indpath._core")],
    cmdclass={"build_ext": CMakeBuild},
)
