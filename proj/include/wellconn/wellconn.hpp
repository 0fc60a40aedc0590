#pragma once

// Umbrella header.

#include "wellconn/boundary.hpp"
#include "wellconn/errors.hpp"
#include "wellconn/extremal.hpp"
#include "wellconn/faces.hpp"
#include "wellconn/gf2.hpp"
#include "wellconn/instance.hpp"
#include "wellconn/strings.hpp"
#include "wellconn/witness.hpp"
