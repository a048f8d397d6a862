import os
import sys

# allow running against an in-tree build: QSU2_EXT_DIR points at the built
# extension, with the package sources on PYTHONPATH
ext = os.environ.get("QSU2_EXT_DIR")
if ext:
    sys.path.insert(0, ext)
    import importlib
    import qsu2 as _pkg

    if not hasattr(_pkg, "qint"):
        importlib.reload(_pkg)
