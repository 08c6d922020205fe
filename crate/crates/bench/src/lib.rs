//! Inputs shared by the benchmarks.

use lyruns::{generate, Text};

#[derive(Debug, Clone, Copy)]
pub enum Kind {
    Random,
    Fibonacci,
    ThueMorse,
    Unary,
}

impl Kind {
    pub const ALL: [Kind; 4] = [Kind::Random, Kind::Fibonacci, Kind::ThueMorse, Kind::Unary];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Random => "random",
            Kind::Fibonacci => "fibonacci",
            Kind::ThueMorse => "thue-morse",
            Kind::Unary => "unary",
        }
    }

    pub fn text(self, n: usize) -> Text {
        match self {
            Kind::Random => generate::random(n, 2, 0),
            Kind::Fibonacci => generate::fibonacci(n),
            Kind::ThueMorse => generate::thue_morse(n),
            Kind::Unary => generate::unary(n),
        }
    }
}

pub const SIZES: [usize; 3] = [1 << 14, 1 << 16, 1 << 18];
