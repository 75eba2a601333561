# ramsey3：3-一致超图拉姆齐构造与验证
__version__ = "0.1.0"
