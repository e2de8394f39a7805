# coding=utf-8
"""
Package used to unify the different constant values used in entire project
"""


class Consts(object):
    """
    Class used to unify the different constant values used in entire project
    """
    # Problem identifiers
    toy = "toy"
    burgers = "burgers"
    heat2d = "heat2d"
    kdv = "kdv"
    fisher = "fisher"
    turing1 = "turing1-1d"
    turing2 = "turing2-2d"
    exp_ode = "exp-ode"

    # Reference names used in reports and result tables
    reference_oracle = "oracle"
    reference_fd = "fd"

    # Exit codes
    exit_ok = 0
    exit_usage = 2
    exit_refused = 3
    exit_diverged = 4

    # Environment and output locations
    output_env_var = "PINNBENCH_OUT"
    default_output_root = "./pinnbench-out"
    slow_tests_env_var = "PINNBENCH_SLOW"

    # Binary file formats
    param_magic = b"PBPV"
    param_version = 1
    field_grid_magic = b"PBFG"
    field_grid_version = 1

    # Config schema
    schema_version = 1

    # Autodiff
    max_jet_order = 3
    loss_chunk = 1024

    # Adam defaults
    adam_lr = 1e-3
    adam_beta1 = 0.9
    adam_beta2 = 0.999
    adam_eps = 1e-8

    # L-BFGS defaults
    lbfgs_memory = 10
    wolfe_c1 = 1e-4
    wolfe_c2 = 0.9
    line_search_max_halvings = 40

    # Divergence guard for explicit schemes
    divergence_threshold = 1e6

    # CSV literals
    csv_role = "role"
    csv_role_initial = "initial"
    csv_role_boundary = "boundary"
    csv_role_interior = "interior"
    csv_time = "t"
    csv_iteration = "iteration"
    csv_loss_initial = "loss_initial"
    csv_loss_boundary = "loss_boundary"
    csv_loss_residual = "loss_residual"
    csv_loss_total = "loss_total"
    csv_layers = "layers"
    csv_neurons = "neurons"
    csv_seed = "seed"
    csv_rmse_oracle = "rmse_vs_oracle"
    csv_rmse_fd = "rmse_vs_fd"
    csv_wall_seconds = "wall_seconds"
    csv_diverged = "diverged"

    # File names
    report_suffix = ".txt"
    loss_history_suffix = "_loss.csv"
    evaluation_suffix = "_eval.csv"
    params_suffix = ".params"
    results_file = "results.csv"
    cell_state_dir = "cells"
