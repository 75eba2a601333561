# 公共模块