pub mod algebra;
pub mod checks;
pub mod linalg;
pub mod module;
pub mod relations;
