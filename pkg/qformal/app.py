# app.py - App info.


APP = "qformal"
VERSION = "0.1.0"
AUTHOR = "qformal developers"
