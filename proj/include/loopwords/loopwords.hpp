#pragma once

#include "error.hpp"
#include "rootsys.hpp"
#include "order.hpp"
#include "words.hpp"
#include "oracle.hpp"
#include "leclerc.hpp"
#include "weyl.hpp"
#include "typea.hpp"
#include "verify.hpp"
