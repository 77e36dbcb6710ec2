# saxlkit - Source Package
