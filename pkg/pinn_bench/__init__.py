# coding=utf-8
"""
Package init file
"""
__all__ = ["autodiff_jet", "autodiff_tape", "benchcli", "fdm_solvers", "field_grid_io", "network_mlp", "optim_adam",
           "optim_lbfgs", "oracles", "pinn_bench_consts", "pinn_bench_exception", "pinn_bench_metrics",
           "pinn_bench_visualizer", "problem_registry", "problem_residuals", "sampling", "trainer"]
