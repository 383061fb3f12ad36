# -*- coding: utf-8 -*-
#
# Copyright (C) 2026 tdnls developers
# All rights reserved.
#
# This software is licensed as described in the file COPYING, which
# you should have received as part of this distribution.
#

import os
import sys
import unittest


def suite():
    suite = unittest.TestSuite()
    here = os.path.dirname(os.path.abspath(__file__))
    for name in sorted(os.listdir(here)):
        if not (name.startswith('test_') and name.endswith('.py')):
            continue
        modname = 'tdnls.tests.' + name[:-3]
        tests = unittest.defaultTestLoader.loadTestsFromName(modname)
        suite.addTests(tests)
        sys.stdout.write('%s : %s tests%s'
                         % (modname, tests.countTestCases(), os.linesep))
        sys.stdout.flush()
    return suite


if __name__ == '__main__':
    unittest.main(defaultTest='suite')
