# -*- coding: utf-8 -*-
"""配置管理模块"""

import json
import os
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from pydantic import BaseModel, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from channel.params import NetworkParams, NoiseParams
from specfun.quadrature import QuadratureSpec
from utils.error_handler import ConfigurationError

CONFIG_ENV_VAR = "ATTOCELL_CONFIG"


class QuadratureConfig(BaseModel):
    """数值积分与截断配置"""
    abs_tol: float = Field(default=1e-12, gt=0, description="绝对容差")
    rel_tol: float = Field(default=1e-12, gt=0, description="相对容差")
    max_depth: int = Field(default=40, ge=1, description="最大二分深度")
    target_abs_error: float = Field(default=1e-10, gt=0, description="自动选取截断阶数时的目标误差")

    def to_spec(self) -> QuadratureSpec:
        return QuadratureSpec(abs_tol=self.abs_tol, rel_tol=self.rel_tol, max_depth=self.max_depth)


class LoggingConfig(BaseModel):
    """日志配置"""
    level: str = Field(default="WARNING", description="日志级别")
    format: str = Field(default="console", description="日志格式 console/json")
    file: Optional[str] = Field(default=None, description="日志文件路径，为空时只输出到 stderr")

    @field_validator('level')
    @classmethod
    def validate_level(cls, v):
        v = str(v).upper()
        if v not in ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']:
            raise ValueError('日志级别必须是 DEBUG/INFO/WARNING/ERROR/CRITICAL 之一')
        return v

    @field_validator('format')
    @classmethod
    def validate_format(cls, v):
        if v not in ['console', 'json']:
            raise ValueError('日志格式必须是 console 或 json')
        return v


class RuntimeConfig(BaseModel):
    """运行时配置"""
    threads: int = Field(default=1, ge=1, le=64, description="扫描计算的工作线程数")


class AttocellConfig(BaseSettings):
    """attocell 主配置"""
    network: NetworkParams = Field(default_factory=NetworkParams, description="网络参数")
    noise: NoiseParams = Field(default_factory=NoiseParams, description="噪声参数")
    quadrature: QuadratureConfig = Field(default_factory=QuadratureConfig, description="数值积分配置")
    logging: LoggingConfig = Field(default_factory=LoggingConfig, description="日志配置")
    runtime: RuntimeConfig = Field(default_factory=RuntimeConfig, description="运行时配置")

    model_config = SettingsConfigDict(
        env_prefix="ATTOCELL_",
        env_nested_delimiter="__",
        env_file=".env",
        extra="allow",
    )

    @staticmethod
    def resolve_path(config_path: str) -> Path:
        """
        查找配置文件

        相对路径依次在当前目录、项目根目录、ATTOCELL_CONFIG_DIR 和 ~/.attocell 下查找。
        """
        config_file = Path(config_path)
        if config_file.is_absolute():
            if not config_file.exists():
                raise ConfigurationError(f"配置文件不存在: {config_path}")
            return config_file

        search_paths = [
            Path.cwd() / config_path,
            Path(__file__).parent / config_path,
            Path(os.environ.get('ATTOCELL_CONFIG_DIR', '.')) / config_path,
            Path.home() / '.attocell' / config_path,
        ]
        for search_path in search_paths:
            if search_path.exists():
                return search_path

        searched_paths = '\n  - '.join(str(p) for p in search_paths)
        raise ConfigurationError(
            f"配置文件不存在: {config_path}\n已搜索:\n  - {searched_paths}",
            details={"config_path": config_path},
        )

    @staticmethod
    def read_mapping(config_path: str) -> Dict[str, Any]:
        """读取 YAML 或 JSON 配置文件为字典（YAML 解析器同样接受 JSON）"""
        config_file = AttocellConfig.resolve_path(config_path)
        try:
            with open(config_file, 'r', encoding='utf-8') as f:
                data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ConfigurationError(f"配置文件解析失败: {config_file}", cause=e)
        if data is None:
            return {}
        if not isinstance(data, dict):
            raise ConfigurationError(f"配置文件顶层必须是映射: {config_file}")
        return data

    @classmethod
    def from_file(cls, config_path: str) -> "AttocellConfig":
        """从 YAML/JSON 文件加载配置，环境变量仍可覆盖文件中未给出的项"""
        return cls(**cls.read_mapping(config_path))

    def to_yaml(self, config_path: str) -> None:
        """保存配置到YAML文件"""
        config_file = Path(config_path)
        config_file.parent.mkdir(parents=True, exist_ok=True)
        with open(config_file, 'w', encoding='utf-8') as f:
            yaml.dump(
                self.model_dump(mode='json', by_alias=True),
                f,
                default_flow_style=False,
                allow_unicode=True,
                indent=2,
            )

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode='json', by_alias=True), ensure_ascii=False, indent=2)

    def validate_config(self) -> List[str]:
        """跨字段检查，返回问题列表（空列表表示有效）"""
        errors = []
        if self.quadrature.abs_tol > 1e-6:
            errors.append("积分绝对容差过大，闭式与求和结果无法在 1e-6 以内比较")
        if self.quadrature.target_abs_error < self.quadrature.abs_tol:
            errors.append("截断目标误差不应小于积分绝对容差")
        if self.network.h / self.network.a > 200.0:
            errors.append("h/a 过大，谱项全部下溢，闭式近似退化为常数项")
        return errors


# 全局配置实例
config: Optional[AttocellConfig] = None


def load_config(config_path: Optional[str] = None) -> AttocellConfig:
    """
    加载配置

    未指定路径时读取 ATTOCELL_CONFIG 环境变量；两者都没有时只使用默认值和环境变量。
    """
    global config

    if config_path is None:
        config_path = os.getenv(CONFIG_ENV_VAR)

    config = AttocellConfig.from_file(config_path) if config_path else AttocellConfig()

    errors = config.validate_config()
    if errors:
        raise ConfigurationError(f"配置验证失败: {', '.join(errors)}", details={"errors": errors})

    return config


def get_config() -> AttocellConfig:
    """获取当前配置，尚未加载时按默认方式加载"""
    if config is None:
        return load_config()
    return config
