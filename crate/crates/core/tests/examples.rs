trait Finished {
    fn finished(self);
}

impl Finished for () {
    fn finished(self) {}
}

impl<E: std::fmt::Debug> Finished for Result<(), E> {
    fn finished(self) {
        self.unwrap();
    }
}

macro_rules! example {
    ($name:ident) => {
        mod $name {
            use super::Finished;

            include!(concat!("../examples/", stringify!($name), ".rs"));

            #[test]
            fn runs() {
                main().finished();
            }
        }
    };
}

example!(surface_numerics);
example!(euler_pairing);
example!(tilt_slopes);
example!(wall_enumeration);
example!(u_class_identities);
example!(curve_restriction);
example!(uhlenbeck_points);
example!(plot_walls);
