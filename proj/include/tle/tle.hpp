#pragma once

#include "coxeter.hpp"
#include "json_io.hpp"
#include "kl_oracle.hpp"
#include "laurent.hpp"
#include "pillar.hpp"
#include "tl_algebra.hpp"
#include "trace.hpp"
#include "verify.hpp"
