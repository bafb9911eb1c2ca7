pub mod cli;
pub mod curve;
pub mod error;
pub mod kclass;
pub mod moduli;
pub mod plot;
pub mod rational;
pub mod sampling;
pub mod surface;
pub mod tilt;
pub mod vertical;
pub mod walls;

pub use error::{Result, TiltError};
pub use kclass::{KClass, ToddClass};
pub use rational::Rational;
pub use surface::{DivisorClass, SurfaceData};
