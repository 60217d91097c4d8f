"""Shared helpers for the demo scripts.

Every demo is self-contained and offline: encoder weights are generated
randomly on first use (see the README for exporting pretrained weights),
and the input images are synthesized. Outputs land in demos/output/.
"""

from pathlib import Path

import numpy as np
import torch
import torch.nn.functional as F

from palette_styler import ImageTensor, load_encoder, new_model, save_random_encoder_weights

OUTPUT_DIR = Path(__file__).parent / "output"


def workspace() -> Path:
    OUTPUT_DIR.mkdir(exist_ok=True)
    return OUTPUT_DIR


def demo_model(seed: int = 0):
    """Encoder + untrained model backed by generated weights."""
    out = workspace()
    weights = out / "vgg19_random.npz"
    if not weights.exists():
        save_random_encoder_weights(weights, seed=0)
        print(f"generated random encoder weights -> {weights}")
    encoder = load_encoder(weights)
    return new_model(encoder, seed=seed)


def gradient_image(size: int, tint) -> ImageTensor:
    """A smooth diagonal color gradient, tinted per channel."""
    ramp = np.linspace(0.0, 1.0, size, dtype=np.float32)
    diag = (ramp[:, None] + ramp[None, :]) / 2.0
    pixels = np.stack([diag * t for t in tint], axis=-1)
    return ImageTensor(np.ascontiguousarray(pixels, dtype=np.float32))


def texture_image(size: int, seed: int, cell: int = 8) -> ImageTensor:
    """Blocky random texture upsampled with a soft bilinear kernel."""
    rng = np.random.default_rng(seed)
    small = rng.random((size // cell, size // cell, 3), dtype=np.float32)
    t = torch.from_numpy(small.transpose(2, 0, 1)).unsqueeze(0)
    big = F.interpolate(t, size=(size, size), mode="bilinear", align_corners=False)
    return ImageTensor(big.squeeze(0).clamp(0, 1).numpy().transpose(1, 2, 0))
