pub mod cli;
pub mod closedforms;
pub mod complexmath;
pub mod lhs;
pub mod nderiv;
pub mod params;
pub mod quadrature;
pub mod registry;
pub mod transforms;

pub use complexmath::Cx;
