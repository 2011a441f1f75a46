"""Modal configuration and shared resources
"""
import modal

# Shared image for the suite workers; the computation is pure Python over sympy's QQ domain
image = (
    modal.Image.debian_slim(python_version="3.12")
    .pip_install(
        "sympy>=1.12",
        "regex",
    )
    # Copy local Python modules into container for imports
    .add_local_python_source("config", "src")
)
