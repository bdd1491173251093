// Copyright 2026 The qcond Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Std companion to `qcond-core`: JSON and CSV file formats, the condition
//! expression grammar, and the `qcond` command line tool.

pub mod cli;
mod error;
pub mod formats;
pub mod parse;

pub use crate::error::{Error, Result};
pub use crate::parse::{parse_condition_expr, ParseError};
