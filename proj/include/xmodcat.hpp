#pragma once

// Umbrella header for the whole library.

#include "xmodcat/error.hpp"
#include "xmodcat/report.hpp"
#include "xmodcat/parallel.hpp"
#include "xmodcat/groups.hpp"
#include "xmodcat/xmod.hpp"
#include "xmodcat/catgroup.hpp"
#include "xmodcat/quintet.hpp"
#include "xmodcat/fincat.hpp"
#include "xmodcat/action.hpp"
#include "xmodcat/transform.hpp"
#include "xmodcat/io.hpp"
#include "xmodcat/dsl.hpp"
#include "xmodcat/dot.hpp"
