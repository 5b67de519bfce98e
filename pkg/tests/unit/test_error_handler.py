# -*- coding: utf-8 -*-
"""
错误处理器单元测试
"""

from datetime import datetime

import pytest

from channel.params import NetworkParams
from utils.error_handler import (
    AttocellError,
    ConfigurationError,
    ConvergenceError,
    DomainError,
    ErrorCategory,
    ErrorHandler,
    ErrorSeverity,
    ExitCode,
    exit_code_for,
)


@pytest.mark.unit
class TestAttocellError:
    """attocell 错误类测试"""

    def test_error_creation(self):
        """测试错误创建"""
        error = AttocellError(
            message="测试错误",
            category=ErrorCategory.DOMAIN,
            severity=ErrorSeverity.HIGH,
            details={"theta_h": 2.0}
        )

        assert error.message == "测试错误"
        assert error.category == ErrorCategory.DOMAIN
        assert error.severity == ErrorSeverity.HIGH
        assert error.details["theta_h"] == 2.0
        assert isinstance(error.timestamp, datetime)
        assert len(error.trace_id) == 8

    def test_error_to_dict(self):
        """测试错误序列化"""
        error = ConvergenceError("积分未收敛", details={"depth": 40})

        error_dict = error.to_dict()

        assert error_dict["message"] == "积分未收敛"
        assert error_dict["category"] == "convergence"
        assert error_dict["severity"] == "high"
        assert error_dict["details"] == {"depth": 40}
        assert "timestamp" in error_dict
        assert "trace_id" in error_dict
        assert len(error_dict["recovery_suggestions"]) > 0

    def test_recovery_suggestions(self):
        """测试错误恢复建议"""
        assert "增大 max_depth" in ConvergenceError("未收敛").get_recovery_suggestions()
        assert "确认扫描区间非空" in ConfigurationError("区间为空").get_recovery_suggestions()
        assert AttocellError("未知").get_recovery_suggestions() == []

    def test_specialized_errors(self):
        """测试专门的错误类"""
        assert DomainError("越界").category == ErrorCategory.DOMAIN
        assert DomainError("越界").severity == ErrorSeverity.MEDIUM
        assert ConvergenceError("未收敛").category == ErrorCategory.CONVERGENCE
        assert ConfigurationError("配置错误").category == ErrorCategory.CONFIGURATION

        cause = ValueError("原始错误")
        error = ConfigurationError("包装错误", cause=cause)
        assert error.cause is cause
        assert error.to_dict()["cause"] == "原始错误"


@pytest.mark.unit
class TestExitCodes:
    """退出码映射测试"""

    def test_usage_errors(self):
        """测试用法类错误映射为 2"""
        assert exit_code_for(ConfigurationError("x")) == ExitCode.USAGE_ERROR == 2
        assert exit_code_for(DomainError("x")) == 2
        with pytest.raises(Exception) as info:
            NetworkParams(h=-1.0)
        assert exit_code_for(info.value) == 2

    def test_numerical_failures(self):
        """测试数值失败映射为 3"""
        assert exit_code_for(ConvergenceError("x")) == ExitCode.NUMERICAL_FAILURE == 3
        assert exit_code_for(RuntimeError("x")) == 3


@pytest.mark.unit
class TestErrorHandler:
    """错误处理器测试"""

    def setup_method(self):
        """测试前准备"""
        self.handler = ErrorHandler(max_history_size=3)

    def test_handle_attocell_error(self):
        """测试处理 attocell 错误"""
        response = self.handler.handle_error(DomainError("越界", details={"h": 0}), {"argv": ["sinr"]})

        assert response["message"] == "越界"
        assert response["category"] == "domain"
        assert response["exit_code"] == 2
        assert response["context"] == {"argv": ["sinr"]}

    def test_handle_validation_error(self):
        """测试参数校验错误被包装为 VALIDATION 类别"""
        try:
            NetworkParams(theta_f=3.0)
        except Exception as e:
            response = self.handler.handle_error(e)

        assert response["category"] == "validation"
        assert response["exit_code"] == 2
        assert response["details"]["errors"][0]["loc"] == "theta_f"

    def test_handle_generic_error(self):
        """测试处理通用错误"""
        try:
            raise ZeroDivisionError("除零")
        except ZeroDivisionError as e:
            response = self.handler.handle_error(e)

        assert response["category"] == "system"
        assert response["severity"] == "critical"
        assert response["details"]["original_type"] == "ZeroDivisionError"
        assert response["exit_code"] == 3

    def test_history_is_bounded(self):
        """测试错误历史长度受限"""
        for i in range(5):
            self.handler.handle_error(ConvergenceError(f"错误 {i}"))

        assert len(self.handler.error_history) == 3
        assert self.handler.error_history[-1]["message"] == "错误 4"
