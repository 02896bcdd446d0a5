//! `.germ` files: a variable declaration followed by named components.
//!
//! ```text
//! vars: x, y, z
//! f1: x
//! f2: x^2 + y*x^2 + y^3 + y*z^2
//! ```

use nspairs::germ::Germ;
use nspairs::{Error, PolynomialGerm};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

/// Parsed `.germ` file; components keep their source text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GermFile {
    pub variables: Vec<String>,
    pub components: Vec<Component>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub name: String,
    pub expression: String,
}

impl GermFile {
    pub fn parse(text: &str) -> CliResult<Self> {
        let mut variables: Option<Vec<String>> = None;
        let mut components: Vec<Component> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.split('#').next().unwrap_or("");
            if line.trim().is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once(':') else {
                return Err(CliError::Input(format!("line {lineno}: expected 'name: value'")));
            };
            let key = key.trim();
            if key == "vars" {
                if variables.is_some() {
                    return Err(CliError::Input(format!("line {lineno}: duplicate 'vars'")));
                }
                variables = Some(value.split(',').map(|v| v.trim().to_string()).collect());
                continue;
            }
            let Some(vars) = &variables else {
                return Err(CliError::Input(format!("line {lineno}: 'vars' must come first")));
            };
            if components.iter().any(|c| c.name == key) {
                return Err(CliError::Input(format!("line {lineno}: duplicate component '{key}'")));
            }
            let expression = value.trim().to_string();
            let colon = line.len() - value.len();
            let value_col = colon + 1 + (value.len() - value.trim_start().len());
            Germ::<nspairs::Rational>::parse(&expression, vars).map_err(|e| match e {
                Error::Syntax { column, message } => CliError::Input(format!(
                    "line {lineno}, column {}: {message}",
                    value_col + column - 1
                )),
                other => CliError::Input(format!("line {lineno}: {other}")),
            })?;
            components.push(Component { name: key.to_string(), expression });
        }
        let variables = variables.ok_or_else(|| CliError::Input("missing 'vars' line".into()))?;
        if components.is_empty() {
            return Err(CliError::Input("no components".into()));
        }
        Ok(GermFile { variables, components })
    }

    /// The named component, or the first one.
    pub fn germ(&self, name: Option<&str>) -> CliResult<PolynomialGerm> {
        let c = match name {
            None => &self.components[0],
            Some(n) => self
                .components
                .iter()
                .find(|c| c.name == n)
                .ok_or_else(|| CliError::Input(format!("no component named '{n}'")))?,
        };
        Ok(Germ::parse(&c.expression, &self.variables)?)
    }
}
