#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
attocell 命令行入口

    attocell interference|sinr|validate|figure [--config FILE] [--model 1d|2d] ...

配置优先级：命令行参数 > --config 场景文件 > ATTOCELL_* 环境变量 / ATTOCELL_CONFIG 配置文件 > 默认值。
"""

import argparse
import math
import sys
from typing import Any, Dict, List, Optional

import structlog

from cli.commands import cmd_figure, cmd_interference, cmd_sinr, cmd_validate
from cli.figures import figure_help, figure_ids
from cli.scenario import OrderSpec, OutputSpec, ScenarioConfig, SweepSpec
from config import AttocellConfig, load_config
from utils.error_handler import ConfigurationError, ErrorHandler, ExitCode
from utils.logger import setup_logging

logger = structlog.get_logger(__name__)


class _ArgumentParser(argparse.ArgumentParser):
    """参数错误抛出 ConfigurationError，由统一的错误处理映射为退出码 2"""

    def error(self, message):
        raise ConfigurationError(f"命令行参数错误: {message}")


def _add_scenario_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="场景配置文件（JSON 或 YAML）")
    parser.add_argument("--model", choices=["1d", "2d"], help="网络模型 (默认: 1d)")
    parser.add_argument("--h", type=float, help="LED 高度 (m)")
    parser.add_argument("--a", type=float, help="LED 间距 (m)")
    parser.add_argument("--hpsa", type=float, help="LED 半功率半角（弧度）")
    parser.add_argument("--fov", type=float, help="接收机视场角（弧度）")
    parser.add_argument("--degrees", action="store_true", help="--hpsa、--fov 及角度扫描以度为单位")
    parser.add_argument("--z", type=float, help="一维接收机位置 (m)")
    parser.add_argument("--dx", type=float, help="二维接收机 x 偏移 (m)")
    parser.add_argument("--dy", type=float, help="二维接收机 y 偏移 (m)")
    parser.add_argument("--method", choices=["oracle", "closed_form", "fov_oracle", "fov_closed_form"],
                        help="干扰计算方法 (默认: closed_form)")
    parser.add_argument("--inclusion", choices=["radial", "ring"], help="二维视场求和的纳入规则")
    parser.add_argument("--n", type=int, help="oracle 求和窗口半宽")
    parser.add_argument("--k", type=int, help="一维闭式谱项数")
    parser.add_argument("--jl", help="二维闭式下标集合 J,L")
    parser.add_argument("--sweep", help="参数扫描 PARAM:LO:HI:STEP，PARAM ∈ z,dx,dy,r,h,a,hpsa,fov,n,k")
    _add_output_arguments(parser)


def _add_output_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", help="输出文件（默认标准输出）")
    parser.add_argument("--format", choices=["csv", "json"], help="输出格式 (默认: csv)")
    parser.add_argument("--threads", type=int, help="工作线程数")
    parser.add_argument("--log-level", default=None,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
                        help="日志级别 (默认: WARNING)")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="attocell",
        description="Li-Fi attocell 网络同频干扰与 SINR 计算",
    )
    sub = parser.add_subparsers(dest="command", parser_class=_ArgumentParser)
    sub.required = True

    _add_scenario_arguments(sub.add_parser("interference", help="计算干扰"))
    _add_scenario_arguments(sub.add_parser("sinr", help="计算 SINR"))

    validate = sub.add_parser("validate", help="对比 oracle 与闭式近似")
    _add_scenario_arguments(validate)
    validate.add_argument("--n-ref", type=int, help="参考求和窗口（默认一维 500、二维 200）")
    validate.add_argument("--tol", type=float, default=1e-6, help="绝对误差容差，严格小于记为 PASS (默认: 1e-6)")

    figure = sub.add_parser(
        "figure",
        help="重新生成图表数据",
        description="可用的图表 id:\n" + figure_help(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    figure.add_argument("figure_id", metavar="ID", help="图表 id: " + ", ".join(figure_ids()))
    _add_output_arguments(figure)
    return parser


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = dict(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


_NETWORK_ALIASES = {"A_pd": "pd_area", "R_pd": "responsivity", "P_o": "optical_power"}


def _normalize_network(data: Dict[str, Any]) -> Dict[str, Any]:
    """把网络参数中的别名（A_pd、R_pd、P_o）统一为字段名，避免两者同时出现"""
    network = data.get("network")
    if not isinstance(network, dict):
        return data
    network = {_NETWORK_ALIASES.get(key, key): value for key, value in network.items()}
    return {**data, "network": network}


def _angle(value: Optional[float], degrees: bool) -> Optional[float]:
    if value is None:
        return None
    return math.radians(value) if degrees else value


def build_scenario(args: argparse.Namespace, settings: AttocellConfig) -> ScenarioConfig:
    """按优先级合并默认设置、场景文件与命令行参数"""
    data: Dict[str, Any] = {
        "network": settings.network.model_dump(),
        "noise": settings.noise.model_dump(),
        "quadrature": settings.quadrature.model_dump(),
        "threads": settings.runtime.threads,
    }
    if args.config:
        data = _merge(data, _normalize_network(AttocellConfig.read_mapping(args.config)))

    network = {
        "h": args.h,
        "a": args.a,
        "theta_h": _angle(args.hpsa, args.degrees),
        "theta_f": _angle(args.fov, args.degrees),
    }
    data["network"] = _merge(data["network"], {k: v for k, v in network.items() if v is not None})

    for key in ("model", "method", "inclusion", "threads"):
        value = getattr(args, key)
        if value is not None:
            data[key] = value

    order = {"n": args.n, "k": args.k, "jl": OrderSpec.parse_jl(args.jl) if args.jl else None}
    order = {k: v for k, v in order.items() if v is not None}
    if order:
        data["order"] = order

    output = {"path": args.out, "format": args.format}
    data["output"] = _merge(data.get("output", {}), {k: v for k, v in output.items() if v is not None})

    position = {"z": args.z, "dx": args.dx, "dy": args.dy}
    position = {k: v for k, v in position.items() if v is not None}
    if args.sweep:
        sweep = SweepSpec.parse(args.sweep)
        data["sweep"] = (sweep.to_radians() if args.degrees else sweep).model_dump()
        data.pop("positions", None)
        if position:
            data["at"] = position
    elif position:
        data["positions"] = [position]
        data.pop("sweep", None)
    elif "positions" not in data and "sweep" not in data:
        # 未给出位置时取标记 LED 正下方
        data["positions"] = [{"z": 0.0}] if data.get("model", "1d") == "1d" else [{"dx": 0.0, "dy": 0.0}]

    return ScenarioConfig.model_validate(data)


def _run(args: argparse.Namespace) -> int:
    settings = load_config()
    setup_logging(args.log_level or settings.logging.level, settings.logging.file, settings.logging.format)

    if args.command == "figure":
        output = OutputSpec(path=args.out, format=args.format or "csv")
        return cmd_figure(args.figure_id, output, args.threads or settings.runtime.threads)

    scenario = build_scenario(args, settings)
    if args.command == "interference":
        return cmd_interference(scenario)
    if args.command == "sinr":
        return cmd_sinr(scenario)
    return cmd_validate(scenario, args.n_ref, args.tol)


def main(argv: Optional[List[str]] = None) -> int:
    """
    主函数

    Returns:
        int: 退出码 0 成功、1 验证未通过、2 用法/配置错误、3 数值失败
    """
    handler = ErrorHandler()
    setup_logging()
    try:
        args = build_parser().parse_args(argv)
        return _run(args)
    except SystemExit as e:
        # --help
        return ExitCode.OK if e.code in (0, None) else ExitCode.USAGE_ERROR
    except Exception as e:
        response = handler.handle_error(e, {"argv": argv})
        print(f"错误: {response['message']}", file=sys.stderr)
        return response['exit_code']


def cli_main():
    """命令行入口点"""
    sys.exit(main())


if __name__ == "__main__":
    cli_main()
