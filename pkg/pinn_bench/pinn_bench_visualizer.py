# coding=utf-8
"""
Static PNG plots of FieldGrid solutions and training histories
"""
import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from pinn_bench.model.classes.field_grid import FieldGrid  # noqa: E402
from pinn_bench.model.classes.train_report import TrainReport  # noqa: E402


def plot_heatmap(field_grid: FieldGrid, name: str, file_name: str, time_index: int = -1) -> None:
    """
    Heatmap of one field: space against time for one spatial axis, the (x, y) plane of one
    stored slice for two.

    :param field_grid: the solution,
    :param name: field to draw,
    :param file_name: output path without the ``.png`` suffix,
    :param time_index: stored slice drawn for two spatial axes.
    """
    values = field_grid.field(name)
    axes = field_grid.grid.spatial
    if len(axes) == 1:
        x = axes[0].coords()
        extent = [field_grid.times[0], field_grid.times[-1], x[0], x[-1]]
        plt.imshow(values.T, aspect="auto", origin="lower", extent=extent, cmap="viridis")
        plt.xlabel("t")
        plt.ylabel(axes[0].name)
    else:
        x, y = axes[0].coords(), axes[1].coords()
        plt.imshow(values[time_index].T, origin="lower", extent=[x[0], x[-1], y[0], y[-1]], cmap="viridis")
        plt.xlabel(axes[0].name)
        plt.ylabel(axes[1].name)
        plt.title(f"{name} at t={field_grid.times[time_index]:g}")
    plt.colorbar()
    plt.savefig(file_name + ".png")
    plt.close()


def plot_time_slices(predicted: FieldGrid, reference: FieldGrid, name: str, times: list[float],
                     file_name: str, reference_label: str = "reference") -> None:
    """
    Side-by-side comparison at the requested times: network and reference curves for one
    spatial axis, reference and network heatmaps for two.
    """
    fig, panels = plt.subplots(1 if len(predicted.grid.spatial) == 1 else 2, len(times),
                               figsize=(4 * len(times), 3.5), squeeze=False)
    for column, time in enumerate(times):
        index = predicted.time_index(time)
        if len(predicted.grid.spatial) == 1:
            x = predicted.grid.spatial[0].coords()
            panel = panels[0][column]
            panel.plot(x, reference.field(name)[reference.time_index(time)], color="red", label=reference_label)
            panel.plot(x, predicted.field(name)[index], linestyle="dashed", label="pinn")
            panel.set_title(f"t={predicted.times[index]:g}")
            panel.legend()
        else:
            for row, (grid, label) in enumerate(((reference, reference_label), (predicted, "pinn"))):
                panel = panels[row][column]
                panel.imshow(grid.field(name)[grid.time_index(time)].T, origin="lower", cmap="viridis")
                panel.set_title(f"{label} t={grid.times[grid.time_index(time)]:g}")
                panel.set_axis_off()
    fig.tight_layout()
    fig.savefig(file_name + ".png")
    plt.close(fig)


def plot_loss_history(report: TrainReport, file_name: str) -> None:
    iterations = np.array([record.iteration for record in report.history])
    for attribute in ("initial", "boundary", "residual", "total"):
        values = np.array([getattr(record, attribute) for record in report.history])
        if np.any(values > 0.0):
            plt.semilogy(iterations, values, label=attribute)
    plt.xlabel("iteration")
    plt.ylabel("loss")
    plt.legend()
    plt.savefig(file_name + ".png")
    plt.close()
