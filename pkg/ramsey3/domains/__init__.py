# 业务域模块