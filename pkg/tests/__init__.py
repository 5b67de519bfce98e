"""attocell 测试模块"""