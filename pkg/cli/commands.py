# -*- coding: utf-8 -*-
"""
命令实现：interference / sinr / validate / figure

每个命令返回退出码；输出按扫描顺序组装，与线程数无关。
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import IO, Callable, List, Optional, Union

import structlog

from channel.params import NetworkParams, NoiseParams
from cli.figures import get_figure
from cli.output import (
    INTERFERENCE_COLUMNS,
    SINR_COLUMNS,
    VALIDATION_COLUMNS,
    SweepRow,
    ValidationRow,
    emit,
)
from cli.scenario import ModelKind, OutputSpec, PositionSpec, ScenarioConfig, SweepParam
from field.field1d import choose_k_1d, interference_1d
from field.field2d import choose_jl_2d, interference_2d
from field.results import FieldPoint, GridIndexSet, InterferenceMethod, InterferenceResult
from sinr.calculator import sinr_1d, sinr_2d
from utils.error_handler import ExitCode

logger = structlog.get_logger(__name__)

Order = Optional[Union[int, GridIndexSet]]


@dataclass(frozen=True)
class GridPoint:
    """待计算的一个点：扫描参数名、取值，以及位置列表模式下的位置"""
    param: str
    value: float
    position: Optional[PositionSpec] = None


@dataclass(frozen=True)
class ResolvedPoint:
    """把扫描值代入场景后的网络参数、位置与阶数"""
    params: NetworkParams
    point: FieldPoint
    n: Optional[int]
    k: Optional[int]
    index_set: Optional[GridIndexSet]


def scenario_grid(config: ScenarioConfig) -> List[GridPoint]:
    """场景的计算点：扫描网格，或位置列表（一维记为 z，二维记为径向距离 r）"""
    if config.sweep is not None:
        return [GridPoint(config.sweep.param.value, v) for v in config.sweep.values()]

    points = []
    for position in config.positions:
        point = position.point(config.model)
        if config.model == ModelKind.ONE_D:
            points.append(GridPoint("z", point.x, position))
        else:
            points.append(GridPoint("r", point.radial, position))
    return points


def _replace_network(network: NetworkParams, param: Optional[SweepParam], value: float) -> NetworkParams:
    if param == SweepParam.H:
        return network.replace(h=value)
    if param == SweepParam.A:
        return network.replace(a=value)
    if param == SweepParam.HPSA:
        return network.replace(theta_h=value)
    if param == SweepParam.FOV:
        return network.replace(theta_f=value)
    return network


def resolve_point(config: ScenarioConfig, grid_point: GridPoint) -> ResolvedPoint:
    """把一个网格点代入场景"""
    one_d = config.model == ModelKind.ONE_D
    param = config.sweep.param if config.sweep is not None else None
    value = grid_point.value
    params = _replace_network(config.network, param, value)

    if grid_point.position is not None:
        point = grid_point.position.point(config.model)
    elif config.relative_position is not None:
        offset = config.relative_position * params.a
        point = FieldPoint.one_d(offset) if one_d else FieldPoint.two_d(offset, offset)
    else:
        point = config.at.point(config.model)

    if param in (SweepParam.Z, SweepParam.R):
        if one_d:
            point = FieldPoint.one_d(value)
        else:
            # 沿对角线 dx = dy
            offset = value / math.sqrt(2.0)
            point = FieldPoint.two_d(offset, offset)
    elif param == SweepParam.DX:
        point = FieldPoint.two_d(value, point.y)
    elif param == SweepParam.DY:
        point = FieldPoint.two_d(point.x, value)

    order = config.order
    target = config.quadrature.target_abs_error
    n = int(value) if param == SweepParam.N else order.n
    k = int(value) if param == SweepParam.K else order.k
    index_set = config.index_set()

    if config.method == InterferenceMethod.ORACLE:
        n = n if n is not None else (50 if one_d else 100)
    elif config.method != InterferenceMethod.FOV_ORACLE:
        if one_d and k is None:
            k = choose_k_1d(params, target)
        if not one_d and index_set is None:
            index_set = choose_jl_2d(params, target)

    return ResolvedPoint(params=params, point=point, n=n, k=k, index_set=index_set)


def _order_for(resolved: ResolvedPoint, method: InterferenceMethod, one_d: bool) -> Order:
    if method == InterferenceMethod.ORACLE:
        return resolved.n
    if method == InterferenceMethod.FOV_ORACLE:
        return None
    return resolved.k if one_d else resolved.index_set


def compute_interference(config: ScenarioConfig, resolved: ResolvedPoint,
                         method: Optional[InterferenceMethod] = None,
                         order: Order = None) -> InterferenceResult:
    """按场景设置计算一个点的干扰；method/order 可覆盖场景设置"""
    method = method or config.method
    one_d = config.model == ModelKind.ONE_D
    if order is None:
        order = _order_for(resolved, method, one_d)
    spec = config.quadrature.to_spec()
    point = resolved.point
    if one_d:
        return interference_1d(resolved.params, point.x, method, order, spec)
    return interference_2d(resolved.params, point.x, point.y, method, order, config.inclusion, spec)


def _evaluate(config: ScenarioConfig, fn: Callable[[GridPoint], object]) -> list:
    grid = scenario_grid(config)
    if config.threads <= 1:
        return [fn(p) for p in grid]
    with ThreadPoolExecutor(max_workers=config.threads) as pool:
        return list(pool.map(fn, grid))


def _interference_row(config: ScenarioConfig, grid_point: GridPoint) -> SweepRow:
    resolved = resolve_point(config, grid_point)
    result = compute_interference(config, resolved)
    return SweepRow(
        sweep_param=grid_point.param,
        sweep_value=grid_point.value,
        value=result.value,
        error_envelope=result.error_envelope,
        terms_used=result.terms_used,
        method=result.method.value,
    )


def cmd_interference(config: ScenarioConfig, stream: Optional[IO[str]] = None) -> int:
    """
    计算干扰并输出一行一个点的结果表

    Returns:
        int: 退出码
    """
    logger.info("计算干扰", model=config.model.value, method=config.method.value)
    rows = _evaluate(config, lambda p: _interference_row(config, p))
    emit(rows, INTERFERENCE_COLUMNS, config.output, stream)
    logger.info("干扰计算完成", rows=len(rows))
    return ExitCode.OK


def _sinr_row(config: ScenarioConfig, noise: NoiseParams, grid_point: GridPoint) -> SweepRow:
    resolved = resolve_point(config, grid_point)
    one_d = config.model == ModelKind.ONE_D
    order = _order_for(resolved, config.method, one_d)
    spec = config.quadrature.to_spec()
    point = resolved.point
    if one_d:
        result = sinr_1d(resolved.params, noise, point.x, config.method, order, spec)
    else:
        result = sinr_2d(resolved.params, noise, point.x, point.y, config.method, order,
                         config.inclusion, spec)
    interference = result.interference
    return SweepRow(
        sweep_param=grid_point.param,
        sweep_value=grid_point.value,
        value=interference.value,
        error_envelope=interference.error_envelope,
        terms_used=interference.terms_used,
        method=interference.method.value,
        sinr=result.sinr_linear,
        sinr_db=result.sinr_db,
    )


def cmd_sinr(config: ScenarioConfig, stream: Optional[IO[str]] = None) -> int:
    """计算 SINR；未配置噪声时使用器件默认噪声参数"""
    noise = config.noise or NoiseParams()
    logger.info("计算 SINR", model=config.model.value, method=config.method.value, N0=noise.N0)
    rows = _evaluate(config, lambda p: _sinr_row(config, noise, p))
    emit(rows, SINR_COLUMNS, config.output, stream)
    return ExitCode.OK


def _validation_methods(method: InterferenceMethod):
    if method.is_fov:
        return InterferenceMethod.FOV_ORACLE, InterferenceMethod.FOV_CLOSED_FORM
    return InterferenceMethod.ORACLE, InterferenceMethod.CLOSED_FORM


def cmd_validate(config: ScenarioConfig, n_ref: Optional[int] = None, tol: float = 1e-6,
                 stream: Optional[IO[str]] = None) -> int:
    """
    对比 oracle 与闭式近似

    Args:
        config: 场景；method 为 oracle 时对比普通闭式，为视场方法时对比视场闭式
        n_ref: 参考求和窗口，默认一维 500、二维 200
        tol: 绝对误差容差，abs_error < tol 记为 PASS

    Returns:
        int: 全部 PASS 时为 0，否则为 1
    """
    one_d = config.model == ModelKind.ONE_D
    if n_ref is None:
        n_ref = 500 if one_d else 200
    oracle_method, closed_method = _validation_methods(config.method)
    swept_n = config.sweep is not None and config.sweep.param == SweepParam.N

    # 闭式阶数按闭式方法解析
    closed_config = config.model_copy(update={
        "method": closed_method,
        "order": config.order.model_copy(update={"n": None}),
    })

    def row(grid_point: GridPoint) -> ValidationRow:
        resolved = resolve_point(closed_config, grid_point)
        if oracle_method == InterferenceMethod.ORACLE:
            oracle_order = int(grid_point.value) if swept_n else n_ref
        else:
            oracle_order = None
        oracle = compute_interference(config, resolved, oracle_method, oracle_order)
        closed = compute_interference(closed_config, resolved, closed_method)
        abs_error = abs(oracle.value - closed.value)
        return ValidationRow(
            sweep_param=grid_point.param,
            sweep_value=grid_point.value,
            oracle=oracle.value,
            closed_form=closed.value,
            abs_error=abs_error,
            error_envelope=closed.error_envelope,
            status="PASS" if abs_error < tol else "FAIL",
        )

    logger.info("对比 oracle 与闭式近似", model=config.model.value, n_ref=n_ref, tol=tol)
    rows = _evaluate(config, row)
    emit(rows, VALIDATION_COLUMNS, config.output, stream)

    failed = [r for r in rows if not r.passed]
    max_error = max(r.abs_error for r in rows)
    if failed:
        logger.warning("验证未通过", failed=len(failed), total=len(rows), max_abs_error=max_error)
        return ExitCode.VALIDATION_FAILED
    logger.info("验证通过", total=len(rows), max_abs_error=max_error)
    return ExitCode.OK


def cmd_figure(figure_id: str, output: Optional[OutputSpec] = None, threads: int = 1,
               stream: Optional[IO[str]] = None) -> int:
    """重新生成图表 id 对应的数据序列"""
    binding = get_figure(figure_id)
    logger.info("生成图表数据", figure_id=figure_id)
    return cmd_interference(binding.build(output=output, threads=threads), stream)
