#pragma once

#include "bentkit/bits.hpp"
#include "bentkit/boolean_function.hpp"
#include "bentkit/construct.hpp"
#include "bentkit/errors.hpp"
#include "bentkit/oracle.hpp"
#include "bentkit/restricted.hpp"
#include "bentkit/text_format.hpp"
#include "bentkit/verify.hpp"
#include "bentkit/walsh.hpp"
