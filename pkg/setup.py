from setuptools import setup, find_packages

setup(
    name="foldlab",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "examples"]),
    package_data={"src": ["data/fixtures/*.poly"]},
    install_requires=[
        "PyQt6",
        "tomli",
        "chardet",
        "numpy",
    ],
    entry_points={
        "console_scripts": [
            "foldlab=src.app:main",
        ],
    },
    description="Cube folding of rectangular polyominoes with holes",
    python_requires=">=3.9",
)
