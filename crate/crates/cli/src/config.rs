//! Plain-text `key = value` configuration files. Flags always win over the
//! file; unknown keys are rejected so typos cannot silently change a run.

use std::path::Path;

use fracsh::Tolerances;

use crate::AppError;

pub fn apply_config_file(path: &Path, tols: &mut Tolerances) -> Result<(), AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::Usage(format!("cannot read config {}: {e}", path.display())))?;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            AppError::Usage(format!(
                "{}:{}: expected key = value, got {raw:?}",
                path.display(),
                lineno + 1
            ))
        })?;
        let key = key.trim();
        let value: f64 = value.trim().parse().map_err(|_| {
            AppError::Usage(format!(
                "{}:{}: value for {key} is not a number",
                path.display(),
                lineno + 1
            ))
        })?;
        match key {
            "quad_abs_tol" => tols.quad_abs_tol = value,
            "residual_tol" => tols.residual_tol = value,
            "pole_margin" => tols.pole_margin = value,
            "match_tol" => tols.match_tol = value,
            other => {
                return Err(AppError::Usage(format!(
                    "{}:{}: unknown config key {other:?}",
                    path.display(),
                    lineno + 1
                )))
            }
        }
    }
    Ok(())
}
