pub mod algebra;
pub mod report;
pub mod reps;
pub mod scalar;
pub mod slh2;
pub mod su2data;
pub mod symplecton;
pub mod verify;
pub mod weyl;
