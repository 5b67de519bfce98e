# -*- coding: utf-8 -*-
"""
配置管理单元测试
"""

import json
import math

import pytest
import yaml
from pydantic import ValidationError

import config as config_module
from config import AttocellConfig, LoggingConfig, QuadratureConfig, get_config, load_config
from utils.error_handler import ConfigurationError


@pytest.mark.unit
class TestAttocellConfig:
    """主配置测试"""

    def test_defaults(self):
        """测试默认配置"""
        settings = AttocellConfig()
        assert settings.network.h == 2.5
        assert settings.network.theta_h == pytest.approx(math.pi / 3)
        assert settings.noise.N0 == 4.14e-21
        assert settings.quadrature.target_abs_error == 1e-10
        assert settings.logging.level == "WARNING"
        assert settings.runtime.threads == 1
        assert settings.validate_config() == []

    def test_from_yaml(self, tmp_path):
        """测试从 YAML 加载"""
        path = tmp_path / "attocell.yaml"
        path.write_text(yaml.safe_dump({
            "network": {"h": 3.0, "a": 0.6, "A_pd": 2e-4},
            "quadrature": {"abs_tol": 1e-11},
        }), encoding="utf-8")

        settings = AttocellConfig.from_file(str(path))
        assert settings.network.h == 3.0
        assert settings.network.pd_area == 2e-4
        assert settings.quadrature.abs_tol == 1e-11
        assert settings.quadrature.rel_tol == 1e-12

    def test_from_json(self, tmp_path):
        """测试从 JSON 加载"""
        path = tmp_path / "attocell.json"
        path.write_text(json.dumps({"noise": {"N0": 0.0}, "runtime": {"threads": 4}}), encoding="utf-8")

        settings = AttocellConfig.from_file(str(path))
        assert settings.noise.N0 == 0.0
        assert settings.runtime.threads == 4

    def test_missing_file(self, tmp_path):
        """测试配置文件不存在"""
        with pytest.raises(ConfigurationError):
            AttocellConfig.from_file(str(tmp_path / "missing.yaml"))
        with pytest.raises(ConfigurationError):
            AttocellConfig.from_file("definitely-missing-attocell.yaml")

    def test_malformed_file(self, tmp_path):
        """测试顶层不是映射的配置文件"""
        path = tmp_path / "list.yaml"
        path.write_text("- 1\n- 2\n", encoding="utf-8")
        with pytest.raises(ConfigurationError):
            AttocellConfig.read_mapping(str(path))

        empty = tmp_path / "empty.yaml"
        empty.write_text("", encoding="utf-8")
        assert AttocellConfig.read_mapping(str(empty)) == {}

    def test_env_override(self, monkeypatch):
        """测试环境变量覆盖嵌套字段"""
        monkeypatch.setenv("ATTOCELL_NETWORK__H", "4.0")
        monkeypatch.setenv("ATTOCELL_RUNTIME__THREADS", "8")

        settings = AttocellConfig()
        assert settings.network.h == 4.0
        assert settings.runtime.threads == 8

    def test_yaml_round_trip(self, tmp_path):
        """测试保存后重新加载"""
        settings = AttocellConfig(network={"h": 3.5, "theta_f": 1.0})
        path = tmp_path / "saved" / "attocell.yaml"
        settings.to_yaml(str(path))

        reloaded = AttocellConfig.from_file(str(path))
        assert reloaded.network == settings.network
        assert json.loads(settings.to_json())["network"]["A_pd"] == 1e-4

    def test_validate_config(self):
        """测试跨字段检查"""
        settings = AttocellConfig(
            network={"h": 250.0, "a": 1.0},
            quadrature={"abs_tol": 1e-5, "target_abs_error": 1e-10},
        )
        errors = settings.validate_config()
        assert len(errors) == 3

    def test_field_validation(self):
        """测试字段校验"""
        with pytest.raises(ValidationError):
            LoggingConfig(level="VERBOSE")
        with pytest.raises(ValidationError):
            LoggingConfig(format="xml")
        with pytest.raises(ValidationError):
            QuadratureConfig(abs_tol=-1.0)
        assert LoggingConfig(level="debug").level == "DEBUG"

    def test_quadrature_spec(self):
        """测试转换为积分控制参数"""
        spec = QuadratureConfig(abs_tol=1e-10, max_depth=12).to_spec()
        assert spec.abs_tol == 1e-10
        assert spec.max_depth == 12


@pytest.mark.unit
class TestLoadConfig:
    """全局配置加载测试"""

    def test_load_default(self):
        """测试无配置文件时使用默认值"""
        settings = load_config()
        assert settings.network.a == 0.5
        assert config_module.config is settings
        assert get_config() is settings

    def test_load_from_env_path(self, tmp_path, monkeypatch):
        """测试通过 ATTOCELL_CONFIG 指定配置文件"""
        path = tmp_path / "attocell.yaml"
        path.write_text("network:\n  a: 0.8\n", encoding="utf-8")
        monkeypatch.setenv("ATTOCELL_CONFIG", str(path))

        assert load_config().network.a == 0.8

    def test_invalid_config_rejected(self, tmp_path):
        """测试跨字段检查失败时抛出配置错误"""
        path = tmp_path / "attocell.yaml"
        path.write_text("quadrature:\n  abs_tol: 0.001\n", encoding="utf-8")
        with pytest.raises(ConfigurationError):
            load_config(str(path))

    def test_get_config_lazy(self):
        """测试首次获取时自动加载"""
        assert config_module.config is None
        assert get_config().runtime.threads == 1
