# t-shallow minor enumeration and minor-maximized parameters
