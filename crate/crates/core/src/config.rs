// Copyright 2026 The qautoenc Developers
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except
// in compliance with the License. You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under
// the License.

//! Flat `key = value` run configuration.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq)]
pub struct RunConfig {
    values: BTreeMap<String, String>,
}

impl RunConfig {
    pub fn new() -> Self {
        Self::default()
    }

    /// Parses `key = value` lines; `#` starts a comment, blank lines are ignored, later
    /// duplicates win.
    pub fn parse(text: &str) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| Error::Parse {
                line: lineno + 1,
                msg: format!("expected `key = value`, found {line:?}"),
            })?;
            let key = k.trim();
            if key.is_empty() {
                return Err(Error::Parse { line: lineno + 1, msg: "empty key".into() });
            }
            values.insert(key.to_string(), v.trim().to_string());
        }
        Ok(Self { values })
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn set(&mut self, key: &str, value: impl ToString) {
        self.values.insert(key.to_string(), value.to_string());
    }

    /// Overlays `other`; its entries take precedence.
    pub fn merge(&mut self, other: &RunConfig) {
        for (k, v) in &other.values {
            self.values.insert(k.clone(), v.clone());
        }
    }

    pub fn get_str(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>> {
        match self.values.get(key) {
            None => Ok(None),
            Some(v) => v
                .parse()
                .map(Some)
                .map_err(|_| Error::InvalidArgument(format!("config key `{key}`: cannot parse {v:?}"))),
        }
    }

    /// Reads `key`, recording `default` in the config when absent so the echo is complete.
    pub fn get_or<T: FromStr + ToString>(&mut self, key: &str, default: T) -> Result<T> {
        match self.get(key)? {
            Some(v) => Ok(v),
            None => {
                self.set(key, default.to_string());
                Ok(default)
            }
        }
    }

    pub fn require<T: FromStr>(&self, key: &str) -> Result<T> {
        self.get(key)?.ok_or_else(|| Error::InvalidArgument(format!("missing required config key `{key}`")))
    }

    /// Rejects keys outside `known`.
    pub fn check_known(&self, known: &[&str]) -> Result<()> {
        match self.values.keys().find(|k| !known.contains(&k.as_str())) {
            Some(k) => Err(Error::InvalidArgument(format!("unknown config key `{k}`"))),
            None => Ok(()),
        }
    }

    pub fn entries(&self) -> &BTreeMap<String, String> {
        &self.values
    }

    /// Sorted `key = value` lines; parsing the echo yields the same config.
    pub fn echo(&self) -> String {
        self.values.iter().map(|(k, v)| format!("{k} = {v}\n")).collect()
    }
}
