pub mod branching;
pub mod crystal;
pub mod error;
pub mod graded;
pub mod lr;
pub mod oracle;
pub mod plactic;
pub mod shapes;
pub mod tableaux;

pub use error::{Error, Result};
pub use graded::{QPoly, WidePoly};
