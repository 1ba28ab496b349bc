#pragma once

#include "subshift/error.hpp"
#include "subshift/words.hpp"
#include "subshift/ep_sequence.hpp"
#include "subshift/bezout.hpp"
#include "subshift/sturmian.hpp"
#include "subshift/classify.hpp"
#include "subshift/flow.hpp"
