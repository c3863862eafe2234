from setuptools import setup, find_packages


setup(
    description="Numerical checks of Harnack-type matrix inequalities.",
    entry_points={"console_scripts": ["pyharnack=pyharnack.cli:main"]},
    extras_require={"test": ["pytest", "hypothesis"],
                    "doc": ["sphinx"]},
    install_requires=["numpy"],
    license="MIT",
    name="pyharnack",
    packages=find_packages(),
    python_requires=">=3.8",
    version="1.0",
)
