#ifndef SPLITGEOM_VERSION_HPP
#define SPLITGEOM_VERSION_HPP

#define SPLITGEOM_VERSION "0.1.0"

#endif
