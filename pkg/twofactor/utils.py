# -*- coding: utf-8 -*-

import lxml.etree


def str_from_xml_elt(xml_elt, **kwargs):
    return lxml.etree.tostring(xml_elt, encoding='unicode', **kwargs)


def ceil_div(a, b):
    """
    >>> ceil_div(5, 2), ceil_div(4, 2), ceil_div(0, 3)
    (3, 2, 0)
    """
    return -(-a // b)
