from setuptools import find_packages, setup


def readme():
    with open("README.md") as f:
        return f.read()


# read version file
exec(open("rmb_ist/version.py").read())

setup(
    name="rmb-ist",
    version=__version__,  # type: ignore # noqa F821
    description="Inverse scattering, N-soliton and long-time asymptotics toolkit for the reduced Maxwell-Bloch "
                "equations.",
    long_description=readme(),
    long_description_content_type="text/markdown",
    license="Apache 2.0",
    packages=find_packages(),
    include_package_data=True,
    python_requires=">=3.7",
    install_requires=[
        "numpy>=1.16.2, <2.0.0",
        "pandas>=0.23.3, <2.0.0",
        "scipy>=1.6.0, <2.0.0",  # scipy.integrate.trapezoid
        "tqdm>=4.28.1, <5.0.0"
    ],
    entry_points={
        "console_scripts": ["rmb-ist = rmb_ist.cli:main"]
    },
    test_suite="tests",
    zip_safe=False,
)
