from setuptools import find_packages, setup

setup(
    name="reachkit",
    version="0.1.0",
    description="Reachable sets of control systems from distance fields and support vector machines.",
    packages=find_packages(exclude=["tests"]),
    package_data={"reachkit.config": ["experiments/*.json"]},
    install_requires=[
        "numpy<2.0.0",
        "scipy>=1.13.0",
        "pandas>=2.2.2",
        "joblib>=1.4.2",
    ],
    extras_require={
        "dev": [
            "pytest>=8.3.1",
            "ruff>=0.5.4",
        ],
    },
    entry_points={"console_scripts": ["reachkit=reachkit.cli.main:main"]},
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
    python_requires=">=3.10",
)
