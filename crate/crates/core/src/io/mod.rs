//! Instance formats and the benchmark instance generator.

pub mod generate;
pub mod native;
pub mod ttp;

use crate::error::ParseError;
use crate::model::Instance;

pub use generate::{generate, Assignment, Family, GeneratorSpec, ValueRange};
pub use native::{parse_native, write_native};
pub use ttp::{parse_route, parse_ttp, TtpOptions};

/// Parses either format, detected by the presence of `NODE_COORD_SECTION`.
pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    parse_instance_with(text, &TtpOptions::default())
}

pub fn parse_instance_with(text: &str, options: &TtpOptions) -> Result<Instance, ParseError> {
    if ttp::looks_like_ttp(text) {
        parse_ttp(text, options)
    } else {
        parse_native(text)
    }
}

/// Writes the native format.
pub fn write_instance(instance: &Instance) -> String {
    write_native(instance)
}
