# Empty __init__.py for exonware package
