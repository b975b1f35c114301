"""
测试公共配置：hypothesis 的默认档案
"""

from hypothesis import settings

# 单个样例可能包含整段 CWT，关闭逐例超时
settings.register_profile("wavelet", deadline=None, print_blob=True)
settings.load_profile("wavelet")
