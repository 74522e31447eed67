from .saving import (load_field, load_samples, load_scattering_data, save_field, save_json, save_prediction_rows,
                     save_scattering_data)

__all__ = [
    "load_field",
    "load_samples",
    "load_scattering_data",
    "save_field",
    "save_json",
    "save_prediction_rows",
    "save_scattering_data"
]
